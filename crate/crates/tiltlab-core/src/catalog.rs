//! Catalogs of exceptional modules (indecomposables with trivial
//! endomorphism ring and no self-extensions) together with their pairwise
//! Hom/Ext tables.
//!
//! The catalog is generated by a breadth-first walk of the reflection orbit:
//! states are pairs (orientation, representation), seeded with the simple
//! representations of the input quiver, and expanded by the sink reflection
//! functor at every sink and the source reflection functor at every source.
//! States whose total dimension exceeds the cap are pruned; states over the
//! original orientation are collected. Since an exceptional module is
//! determined up to isomorphism by its dimension vector (for a fixed
//! orientation), entries are keyed and sorted by dimension vector.
//!
//! For a Dynkin quiver this recovers every indecomposable — one per positive
//! root — and the catalog is flagged complete. For Euclidean or wild quivers
//! the walk enumerates the preprojective and preinjective exceptionals and
//! the regular ones reachable under the cap, and the flag is false.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quiver::{is_dynkin, positive_roots, DimVector, Quiver};
use crate::rep::{hom_ext, reflect_at_sink, reflect_at_source, Representation};

/// One exceptional module: its dimension vector and a concrete
/// representative.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Dimension vector over the catalog's quiver.
    pub dims: DimVector,
    /// Concrete matrices realizing the module.
    pub rep: Representation,
}

/// The exceptional modules of a quiver up to a total-dimension cap, sorted
/// lexicographically by dimension vector.
#[derive(Debug, Clone)]
pub struct Catalog {
    quiver: Quiver,
    entries: Vec<CatalogEntry>,
    cap: i64,
    complete: bool,
}

impl Catalog {
    /// The quiver the catalog was built over.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Entries in lexicographic dimension-vector order.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// The total-dimension cap the walk was pruned at.
    pub fn cap(&self) -> i64 {
        self.cap
    }

    /// True when the catalog provably contains every exceptional module
    /// (the quiver is Dynkin and the cap did not cut the root system off).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Index of the entry with the given dimension vector.
    pub fn find(&self, dims: &[i64]) -> Option<usize> {
        self.entries
            .binary_search_by(|e| e.dims.as_slice().cmp(dims))
            .ok()
    }

    /// Like [`find`](Self::find) but with a descriptive error.
    pub fn require(&self, dims: &[i64]) -> Result<usize> {
        self.find(dims).ok_or_else(|| {
            Error::InvalidInput(format!(
                "{} is not an exceptional module in this catalog (cap {})",
                self.quiver.dim_string(dims),
                self.cap
            ))
        })
    }

    /// Reassembles a catalog from previously exported parts (cache files,
    /// round-tripped JSON). Entries are re-sorted canonically and checked
    /// for shape — each representation must realize its declared dimension
    /// vector over `quiver`, with no duplicates. Exceptionality itself is
    /// not re-proved; exports are trusted to contain what the builder wrote.
    pub fn from_parts(
        quiver: Quiver,
        mut entries: Vec<CatalogEntry>,
        cap: i64,
        complete: bool,
    ) -> Result<Catalog> {
        for e in &entries {
            quiver.check_dim(&e.dims)?;
            if e.rep.dims() != e.dims.as_slice() {
                return Err(Error::InvalidInput(
                    "entry dimension vector disagrees with its representation".into(),
                ));
            }
        }
        entries.sort_by(|a, b| a.dims.cmp(&b.dims));
        if entries.windows(2).any(|w| w[0].dims == w[1].dims) {
            return Err(Error::InvalidInput(
                "duplicate dimension vector among catalog entries".into(),
            ));
        }
        Ok(Catalog {
            quiver,
            entries,
            cap,
            complete,
        })
    }

    /// Pairwise `(hom, ext)` tables: `tables.hom[i][j] = dim Hom(M_i, M_j)`.
    pub fn tables(&self) -> Result<CatalogTables> {
        let n = self.entries.len();
        let mut hom = Vec::with_capacity(n);
        let mut ext = Vec::with_capacity(n);
        for i in 0..n {
            let mut hrow = Vec::with_capacity(n);
            let mut erow = Vec::with_capacity(n);
            for j in 0..n {
                let (h, e) = hom_ext(&self.quiver, &self.entries[i].rep, &self.entries[j].rep)?;
                hrow.push(h);
                erow.push(e);
            }
            hom.push(hrow);
            ext.push(erow);
        }
        Ok(CatalogTables { hom, ext })
    }
}

/// Hom and Ext dimension tables over a catalog, indexed like its entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogTables {
    /// `hom[i][j] = dim Hom(M_i, M_j)`.
    pub hom: Vec<Vec<usize>>,
    /// `ext[i][j] = dim Ext¹(M_i, M_j)`.
    pub ext: Vec<Vec<usize>>,
}

/// Builds the catalog of exceptional modules with total dimension ≤ `cap`.
pub fn exceptional_catalog(q: &Quiver, cap: i64) -> Result<Catalog> {
    if cap < 1 {
        return Err(Error::InvalidInput(format!(
            "catalog cap must be at least 1, got {cap}"
        )));
    }
    let original: Vec<(usize, usize)> = q.arrows().to_vec();
    let mut visited: BTreeSet<(Vec<(usize, usize)>, Vec<i64>)> = BTreeSet::new();
    let mut seen_orientations: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut collected: BTreeMap<DimVector, Representation> = BTreeMap::new();
    let mut queue: VecDeque<(Quiver, Representation)> = (0..q.n())
        .map(|i| (q.clone(), Representation::simple(q, i)))
        .collect();
    while let Some((cur_q, rep)) = queue.pop_front() {
        let key = (cur_q.arrows().to_vec(), rep.dims().to_vec());
        if !visited.insert(key) {
            continue;
        }
        // A reflection functor applied to a simple at the reflection vertex
        // yields zero, so chains through such simples would be cut short.
        // Seeding every simple over each newly reached orientation restores
        // them: any exceptional is a composite of inverse reflections applied
        // to some simple over some reachable orientation.
        if seen_orientations.insert(cur_q.arrows().to_vec()) {
            for i in 0..cur_q.n() {
                queue.push_back((cur_q.clone(), Representation::simple(&cur_q, i)));
            }
        }
        if rep.total_dim() > cap {
            continue;
        }
        if cur_q.arrows() == original.as_slice() {
            collected
                .entry(rep.dims().to_vec())
                .or_insert_with(|| rep.clone());
        }
        for v in 0..cur_q.n() {
            if cur_q.is_sink(v) {
                let (nq, nrep) = reflect_at_sink(&cur_q, v, &rep)?;
                if !nrep.is_zero() {
                    queue.push_back((nq, nrep));
                }
            }
        }
        for v in 0..cur_q.n() {
            if cur_q.is_source(v) {
                let (nq, nrep) = reflect_at_source(&cur_q, v, &rep)?;
                if !nrep.is_zero() {
                    queue.push_back((nq, nrep));
                }
            }
        }
    }
    let entries: Vec<CatalogEntry> = collected
        .into_iter()
        .map(|(dims, rep)| CatalogEntry { dims, rep })
        .collect();
    for entry in &entries {
        let invariants = hom_ext(q, &entry.rep, &entry.rep)?;
        if invariants != (1, 0) {
            return Err(Error::Internal(format!(
                "reflection orbit produced a non-exceptional module at {}",
                q.dim_string(&entry.dims)
            )));
        }
    }
    let complete = is_dynkin(q) && entries.len() == positive_roots(q)?.len();
    Ok(Catalog {
        quiver: q.clone(),
        entries,
        cap,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims_of(catalog: &Catalog) -> Vec<Vec<i64>> {
        catalog.entries().iter().map(|e| e.dims.clone()).collect()
    }

    #[test]
    fn a3_catalog_is_the_positive_root_system() {
        let q = Quiver::linear(3);
        let cat = exceptional_catalog(&q, 10).unwrap();
        assert!(cat.is_complete());
        assert_eq!(dims_of(&cat), positive_roots(&q).unwrap());
        assert_eq!(cat.find(&[1, 1, 0]), Some(4));
        assert_eq!(cat.find(&[2, 1, 0]), None);
    }

    #[test]
    fn a3_catalog_incomplete_when_cap_cuts_roots_off() {
        let q = Quiver::linear(3);
        let cat = exceptional_catalog(&q, 2).unwrap();
        assert!(!cat.is_complete());
        assert_eq!(cat.entries().len(), 5); // all roots except (1,1,1)
    }

    #[test]
    fn a2_tables() {
        let q = Quiver::linear(2);
        let cat = exceptional_catalog(&q, 5).unwrap();
        assert_eq!(
            dims_of(&cat),
            [[0i64, 1], [1, 0], [1, 1]].map(|d| d.to_vec()).to_vec()
        );
        let tables = cat.tables().unwrap();
        assert_eq!(
            tables.hom,
            [[1usize, 0, 0], [0, 1, 1], [1, 0, 1]].map(|r| r.to_vec()).to_vec()
        );
        assert_eq!(
            tables.ext,
            [[0usize, 1, 0], [0, 0, 0], [0, 0, 0]].map(|r| r.to_vec()).to_vec()
        );
    }

    #[test]
    fn a3_tables() {
        let q = Quiver::linear(3);
        let tables = exceptional_catalog(&q, 10).unwrap().tables().unwrap();
        let hom: Vec<Vec<usize>> = [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 1, 0, 0, 0],
            [1, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 1, 1],
            [0, 1, 1, 0, 1, 1],
            [1, 0, 1, 0, 0, 1],
        ]
        .map(|r| r.to_vec())
        .to_vec();
        let ext: Vec<Vec<usize>> = [
            [0, 1, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ]
        .map(|r| r.to_vec())
        .to_vec();
        assert_eq!(tables.hom, hom);
        assert_eq!(tables.ext, ext);
    }

    #[test]
    fn kronecker_catalog_is_preprojective_and_preinjective() {
        let q = Quiver::kronecker();
        let cat5 = exceptional_catalog(&q, 5).unwrap();
        assert!(!cat5.is_complete());
        assert_eq!(
            dims_of(&cat5),
            [[0i64, 1], [1, 0], [1, 2], [2, 1], [2, 3], [3, 2]]
                .map(|d| d.to_vec())
                .to_vec()
        );
        let cat10 = exceptional_catalog(&q, 10).unwrap();
        assert_eq!(cat10.entries().len(), 10);
        let expected: Vec<Vec<i64>> = (0..5)
            .flat_map(|t| [vec![t, t + 1], vec![t + 1, t]])
            .collect();
        let mut expected = expected;
        expected.sort();
        assert_eq!(dims_of(&cat10), expected);
    }

    #[test]
    fn square_catalog_counts() {
        let q = Quiver::square_tilde_a22();
        let cat3 = exceptional_catalog(&q, 3).unwrap();
        assert_eq!(cat3.entries().len(), 12);
        let cat5 = exceptional_catalog(&q, 5).unwrap();
        assert_eq!(cat5.entries().len(), 14);
        let expected: Vec<Vec<i64>> = [
            [0, 0, 0, 1],
            [0, 0, 1, 0],
            [0, 0, 1, 1],
            [0, 1, 0, 0],
            [0, 1, 0, 1],
            [0, 1, 1, 1],
            [1, 0, 0, 0],
            [1, 0, 1, 0],
            [1, 0, 1, 1],
            [1, 1, 0, 0],
            [1, 1, 0, 1],
            [1, 1, 1, 0],
            [1, 1, 1, 2],
            [2, 1, 1, 1],
        ]
        .map(|d| d.to_vec())
        .to_vec();
        assert_eq!(dims_of(&cat5), expected);
        // Isotropic vectors (multiples of (1,1,1,1)) never appear.
        assert_eq!(cat5.find(&[1, 1, 1, 1]), None);
    }

    #[test]
    fn catalog_rejects_silly_cap() {
        assert!(exceptional_catalog(&Quiver::linear(2), 0).is_err());
    }
}
