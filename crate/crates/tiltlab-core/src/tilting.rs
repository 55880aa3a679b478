//! Tilting modules and the combinatorics built on them: enumeration as
//! maximal rigid cliques, complements of almost complete tilting modules,
//! the torsion pair induced by a tilting module, slices, two-term
//! (Schofield) filtrations of exceptional modules, and length-volume sums.
//!
//! Throughout, a module is given by its index into a [`Catalog`]; a tilting
//! module on support `Θ` is a set of `|Θ|` pairwise ext-orthogonal
//! exceptional modules all supported inside `Θ`. For a hereditary algebra
//! maximal rigid equals tilting, so clique enumeration is exact.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::quiver::{
    coxeter_transform, euler_data, is_dynkin, is_sincere, mat_apply, positive_roots, support,
    DimVector, Quiver,
};
use crate::rep::{coxeter_functor, hom_ext, Representation};
use crate::{rat, Rat};

/// All maximal cliques of the graph on `0..n` with adjacency `adj`,
/// via Bron–Kerbosch with pivoting. Deterministic: the pivot is the vertex
/// (smallest index on ties) covering the most of the candidate set, and
/// cliques come out sorted.
pub(crate) fn maximal_cliques(n: usize, adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    fn extend(
        adj: &[BTreeSet<usize>],
        current: &mut Vec<usize>,
        mut candidates: BTreeSet<usize>,
        mut excluded: BTreeSet<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_empty() && excluded.is_empty() {
            out.push(current.clone());
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .copied()
            .min_by_key(|&u| (usize::MAX - candidates.intersection(&adj[u]).count(), u))
            .expect("candidate or excluded set is nonempty");
        let branches: Vec<usize> = candidates.difference(&adj[pivot]).copied().collect();
        for v in branches {
            let next_candidates = candidates.intersection(&adj[v]).copied().collect();
            let next_excluded = excluded.intersection(&adj[v]).copied().collect();
            current.push(v);
            extend(adj, current, next_candidates, next_excluded, out);
            current.pop();
            candidates.remove(&v);
            excluded.insert(v);
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(
        adj,
        &mut current,
        (0..n).collect(),
        BTreeSet::new(),
        &mut out,
    );
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

/// Ext-compatibility adjacency among the chosen catalog entries:
/// `i ~ j` iff `Ext¹` vanishes in both directions.
fn ext_adjacency(catalog: &Catalog, chosen: &[usize]) -> Result<Vec<BTreeSet<usize>>> {
    let q = catalog.quiver();
    let mut adj = vec![BTreeSet::new(); chosen.len()];
    for a in 0..chosen.len() {
        for b in (a + 1)..chosen.len() {
            let ma = &catalog.entries()[chosen[a]].rep;
            let mb = &catalog.entries()[chosen[b]].rep;
            let (_, eab) = hom_ext(q, ma, mb)?;
            let (_, eba) = hom_ext(q, mb, ma)?;
            if eab == 0 && eba == 0 {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    Ok(adj)
}

/// All tilting modules supported inside `theta`, as sorted lists of catalog
/// indices: the ext-orthogonal sets of exactly `|theta|` modules whose
/// supports lie in `theta`.
///
/// For `theta = ∅` the unique (empty) tilting module of the zero algebra is
/// returned. Over a capped catalog of a non-Dynkin quiver the enumeration is
/// restricted to summands the cap reaches.
pub fn tilting_sets(catalog: &Catalog, theta: &BTreeSet<usize>) -> Result<Vec<Vec<usize>>> {
    let q = catalog.quiver();
    for &v in theta {
        if v >= q.n() {
            return Err(Error::InvalidInput(format!(
                "support vertex index {v} out of range"
            )));
        }
    }
    if theta.is_empty() {
        return Ok(vec![vec![]]);
    }
    let chosen: Vec<usize> = (0..catalog.entries().len())
        .filter(|&i| support(&catalog.entries()[i].dims).is_subset(theta))
        .collect();
    let adj = ext_adjacency(catalog, &chosen)?;
    let cliques = maximal_cliques(chosen.len(), &adj);
    Ok(cliques
        .into_iter()
        .filter(|c| c.len() == theta.len())
        .map(|c| c.into_iter().map(|i| chosen[i]).collect())
        .collect())
}

/// All tilting modules of the full algebra (support = every vertex).
pub fn enumerate_tilting(catalog: &Catalog) -> Result<Vec<Vec<usize>>> {
    let theta: BTreeSet<usize> = (0..catalog.quiver().n()).collect();
    tilting_sets(catalog, &theta)
}

/// Checks that the given catalog entries are pairwise ext-orthogonal.
fn check_rigid(catalog: &Catalog, modules: &[usize]) -> Result<()> {
    let q = catalog.quiver();
    for (k, &i) in modules.iter().enumerate() {
        if i >= catalog.entries().len() {
            return Err(Error::InvalidInput(format!(
                "catalog index {i} out of range"
            )));
        }
        for &j in &modules[k + 1..] {
            let mi = &catalog.entries()[i].rep;
            let mj = &catalog.entries()[j].rep;
            if hom_ext(q, mi, mj)?.1 != 0 || hom_ext(q, mj, mi)?.1 != 0 {
                return Err(Error::Precondition(format!(
                    "modules {} and {} extend each other; the set is not rigid",
                    q.dim_string(&catalog.entries()[i].dims),
                    q.dim_string(&catalog.entries()[j].dims)
                )));
            }
        }
    }
    Ok(())
}

/// Completes an almost complete tilting module (a rigid set of `n − 1`
/// distinct modules) to tilting modules in every possible way.
///
/// Returns the catalog indices of the complements, sorted; there are two
/// exactly when the input is sincere and one otherwise.
pub fn complements(catalog: &Catalog, partial: &[usize]) -> Result<Vec<usize>> {
    let q = catalog.quiver();
    let distinct: BTreeSet<usize> = partial.iter().copied().collect();
    if distinct.len() != partial.len() || partial.len() + 1 != q.n() {
        return Err(Error::Precondition(format!(
            "an almost complete tilting module here has {} distinct summands, got {}",
            q.n() - 1,
            partial.len()
        )));
    }
    check_rigid(catalog, partial)?;
    let mut out = Vec::new();
    for c in 0..catalog.entries().len() {
        if distinct.contains(&c) {
            continue;
        }
        let mut candidate: Vec<usize> = partial.to_vec();
        candidate.push(c);
        if check_rigid(catalog, &candidate).is_ok() {
            out.push(c);
        }
    }
    Ok(out)
}

/// How the indecomposables split under the torsion pair of a tilting module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSplit {
    /// Entries generated by `T`: `Ext¹(T, −)` vanishes.
    pub torsion: Vec<usize>,
    /// Entries receiving nothing from `T`: `Hom(T, −)` vanishes.
    pub torsion_free: Vec<usize>,
    /// Entries with a proper torsion submodule: both functors are nonzero.
    pub neither: Vec<usize>,
}

/// Classifies every catalog entry against the torsion pair
/// `(Gen T, {M : Hom(T, M) = 0})` of a tilting module `T`.
pub fn torsion_classify(catalog: &Catalog, tilt: &[usize]) -> Result<TorsionSplit> {
    let q = catalog.quiver();
    if tilt.len() != q.n() {
        return Err(Error::Precondition(format!(
            "a tilting module here has {} summands, got {}",
            q.n(),
            tilt.len()
        )));
    }
    check_rigid(catalog, tilt)?;
    let mut split = TorsionSplit {
        torsion: Vec::new(),
        torsion_free: Vec::new(),
        neither: Vec::new(),
    };
    for (m, entry) in catalog.entries().iter().enumerate() {
        let mut hom_total = 0usize;
        let mut ext_total = 0usize;
        for &t in tilt {
            let (h, e) = hom_ext(q, &catalog.entries()[t].rep, &entry.rep)?;
            hom_total += h;
            ext_total += e;
        }
        if ext_total == 0 {
            split.torsion.push(m);
        } else if hom_total == 0 {
            split.torsion_free.push(m);
        } else {
            split.neither.push(m);
        }
    }
    Ok(split)
}

/// Whether the modules form a tilting set: one summand per quiver vertex,
/// all distinct and exceptional, pairwise free of extensions, and jointly
/// sincere.
pub fn is_tilting_set(q: &Quiver, modules: &[Representation]) -> Result<bool> {
    if modules.len() != q.n() {
        return Ok(false);
    }
    // Exceptional modules are determined by their dimension vectors, so
    // distinct dimension vectors mean distinct summands.
    let distinct: BTreeSet<Vec<i64>> = modules.iter().map(|m| m.dims().to_vec()).collect();
    if distinct.len() != modules.len() {
        return Ok(false);
    }
    let mut total = vec![0i64; q.n()];
    for m in modules {
        for (acc, &d) in total.iter_mut().zip(m.dims()) {
            *acc += d;
        }
        if hom_ext(q, m, m)? != (1, 0) {
            return Ok(false);
        }
    }
    if !is_sincere(&total) {
        return Ok(false);
    }
    for (i, a) in modules.iter().enumerate() {
        for (j, b) in modules.iter().enumerate() {
            if i != j && hom_ext(q, a, b)?.1 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the tilting modules form a slice: `Ext¹(τX, Y) = 0` for all
/// members `X`, `Y`, where `τ` is the Auslander–Reiten translate (projective
/// summands have `τX = 0` and contribute nothing).
///
/// Slices are exactly the tilting modules whose endomorphism algebra is again
/// hereditary; the direct sum of the indecomposable projectives is always
/// one. Sets that fail the tilting checks (wrong count, repeated or
/// non-exceptional summands, not sincere, not rigid) return `false`.
pub fn is_slice(q: &Quiver, modules: &[Representation]) -> Result<bool> {
    if !is_tilting_set(q, modules)? {
        return Ok(false);
    }
    let translates: Vec<Representation> = modules
        .iter()
        .map(|m| coxeter_functor(q, m, 1))
        .collect::<Result<Vec<_>>>()?;
    for tx in &translates {
        if tx.is_zero() {
            continue;
        }
        for y in modules {
            if hom_ext(q, tx, y)?.1 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A two-term filtration of an exceptional module `E`: an exact sequence
/// `0 → S^s → E → Q^q → 0` with `(Q, S)` an orthogonal exceptional pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchofieldSequence {
    /// Dimension vector of the quotient-side exceptional `Q`.
    pub quotient: DimVector,
    /// Dimension vector of the submodule-side exceptional `S`.
    pub sub: DimVector,
    /// Multiplicity of `Q` in the quotient.
    pub quotient_mult: i64,
    /// Multiplicity of `S` in the submodule.
    pub sub_mult: i64,
    /// `dim Ext¹(Q, S)` — the number of arrows in the generalized Kronecker
    /// quiver the pair spans.
    pub ext_count: usize,
}

/// Solves `a·u + b·v = target` for nonnegative integers `(a, b)` given
/// linearly independent `u`, `v`.
fn two_term_combination(u: &[i64], v: &[i64], target: &[i64]) -> Option<(i64, i64)> {
    let n = u.len();
    for p in 0..n {
        for r in (p + 1)..n {
            let det = u[p] * v[r] - u[r] * v[p];
            if det == 0 {
                continue;
            }
            let num_a = target[p] * v[r] - target[r] * v[p];
            let num_b = u[p] * target[r] - u[r] * target[p];
            if num_a % det != 0 || num_b % det != 0 {
                return None;
            }
            let (a, b) = (num_a / det, num_b / det);
            let ok = (0..n).all(|k| a * u[k] + b * v[k] == target[k]);
            return if ok && a >= 0 && b >= 0 { Some((a, b)) } else { None };
        }
    }
    None
}

/// All Schofield sequences of the exceptional module with dimension vector
/// `e_dims`, sorted by `(quotient, sub, quotient_mult, sub_mult)`.
///
/// A pair `(Q, S)` of exceptionals qualifies when Hom vanishes in both
/// directions, `Ext¹(S, Q) = 0`, `t = dim Ext¹(Q, S) ≥ 1`, and `E` is a
/// nonnegative combination `q·dim Q + s·dim S` with `q, s ≥ 1`; the number of
/// sequences equals the support size of `E` minus one.
pub fn schofield_sequences(catalog: &Catalog, e_dims: &[i64]) -> Result<Vec<SchofieldSequence>> {
    catalog.require(e_dims)?;
    let tables = catalog.tables()?;
    let n = catalog.entries().len();
    let mut out = Vec::new();
    for qi in 0..n {
        for si in 0..n {
            if qi == si
                || tables.hom[qi][si] != 0
                || tables.hom[si][qi] != 0
                || tables.ext[si][qi] != 0
                || tables.ext[qi][si] == 0
            {
                continue;
            }
            let qd = &catalog.entries()[qi].dims;
            let sd = &catalog.entries()[si].dims;
            let Some((a, b)) = two_term_combination(qd, sd, e_dims) else {
                continue;
            };
            if a < 1 || b < 1 {
                continue;
            }
            let t = tables.ext[qi][si] as i64;
            debug_assert_eq!(a * a + b * b - t * a * b, 1);
            out.push(SchofieldSequence {
                quotient: qd.clone(),
                sub: sd.clone(),
                quotient_mult: a,
                sub_mult: b,
                ext_count: tables.ext[qi][si],
            });
        }
    }
    out.sort_by(|x, y| {
        (&x.quotient, &x.sub, x.quotient_mult, x.sub_mult).cmp(&(
            &y.quotient,
            &y.sub,
            y.quotient_mult,
            y.sub_mult,
        ))
    });
    Ok(out)
}

/// One tilting module's contribution to the volume sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeTerm {
    /// Dimension vectors of the summands, lexicographically sorted.
    pub dims: Vec<DimVector>,
    /// `∏ 1/length(T_i)` where length is the total dimension.
    pub value: Rat,
}

/// The length-volume identity data for a Dynkin quiver: every tilting module
/// contributes the reciprocal product of its summands' lengths, and the
/// terms sum to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeReport {
    /// Per-tilting-module contributions.
    pub terms: Vec<VolumeTerm>,
    /// Sum of all contributions.
    pub total: Rat,
}

/// Computes the volume sum `Σ_T ∏_i 1/length(T_i)` over all tilting modules
/// of a Dynkin quiver.
pub fn volume_sum(q: &Quiver) -> Result<VolumeReport> {
    if !is_dynkin(q) {
        return Err(Error::NotDynkin(
            "the full volume sum needs finitely many tilting modules; \
             use the Kronecker partial sums for the tame case"
                .into(),
        ));
    }
    let cap = positive_roots(q)?
        .iter()
        .map(|r| r.iter().sum::<i64>())
        .max()
        .unwrap_or(1);
    let catalog = crate::catalog::exceptional_catalog(q, cap)?;
    let tiltings = enumerate_tilting(&catalog)?;
    let mut terms = Vec::new();
    let mut total = Rat::zero();
    for t in &tiltings {
        let mut value = Rat::one();
        let mut dims = Vec::new();
        for &i in t {
            let d = &catalog.entries()[i].dims;
            value *= rat(1, d.iter().sum());
            dims.push(d.clone());
        }
        total += &value;
        terms.push(VolumeTerm { dims, value });
    }
    Ok(VolumeReport { terms, total })
}

/// Dimension vectors of the first `count` preprojective Kronecker modules
/// `P_1, P_2, …` (that is `(0,1), (1,2), (2,3), …`), generated by iterating
/// the inverse Coxeter transformation from the two projectives.
///
/// The preprojective component splits into two Coxeter orbits — one through
/// each projective — and consecutive list entries alternate between them, so
/// entry `k` arises from entry `k − 2` rather than `k − 1`.
pub fn kronecker_preprojective_dims(count: usize) -> Vec<DimVector> {
    let q = Quiver::kronecker();
    let data = euler_data(&q);
    let mut out: Vec<DimVector> = Vec::with_capacity(count);
    for step in 0..count {
        let next = match step {
            0 => vec![0i64, 1],
            1 => vec![1i64, 2],
            k => mat_apply(&data.coxeter_inv, &out[k - 2]),
        };
        out.push(next);
    }
    out
}

/// Partial volume sum over the first `n` preprojective Kronecker tilting
/// modules `P_t ⊕ P_{t+1}`: `Σ_{t=1}^{n} 1/((2t−1)(2t+1)) = n/(2n+1)`.
pub fn kronecker_volume_partial(n: usize) -> Rat {
    let dims = kronecker_preprojective_dims(n + 1);
    let mut total = Rat::zero();
    for pair in dims.windows(2) {
        let l1: i64 = pair[0].iter().sum();
        let l2: i64 = pair[1].iter().sum();
        total += rat(1, l1 * l2);
    }
    total
}

/// Weighted partial volume sum for the Kronecker quiver with weights
/// `(x, y)` on the two vertices: `Σ_{t=1}^{n} 1/((t·x + (t−1)·y)·((t+1)·x + t·y))`.
///
/// Telescopes to `(1/(x+y))·(1/x − 1/((n+1)x + n·y))`.
pub fn weighted_kronecker_partial(n: usize, x: &Rat, y: &Rat) -> Result<Rat> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    let mut total = Rat::zero();
    for t in 1..=(n as i64) {
        let left = rat(t, 1) * x + rat(t - 1, 1) * y;
        let right = rat(t + 1, 1) * x + rat(t, 1) * y;
        total += Rat::one() / (left * right);
    }
    Ok(total)
}

/// Closed form of [`weighted_kronecker_partial`].
pub fn weighted_kronecker_closed(n: usize, x: &Rat, y: &Rat) -> Result<Rat> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    let n = n as i64;
    let tail = rat(n + 1, 1) * x + rat(n, 1) * y;
    Ok(Rat::one() / (x + y) * (Rat::one() / x - Rat::one() / tail))
}

/// The two candidate limits of the weighted sums as `n → ∞`: the telescoped
/// value `1/(x(x+y))`, and `1/(2xy)` — the same quantity written in the form
/// it takes at equal weights. They agree exactly when `x = y`; the check
/// report surfaces the discrepancy rather than asserting either.
pub fn weighted_kronecker_limits(x: &Rat, y: &Rat) -> Result<(Rat, Rat)> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::InvalidInput("weights must be positive".into()));
    }
    let telescoped = Rat::one() / (x * (x + y));
    let quoted = Rat::one() / (rat(2, 1) * x * y);
    Ok((telescoped, quoted))
}

/// Dimension-vector form of a tilting set, for reports.
pub fn dims_of_set(catalog: &Catalog, set: &[usize]) -> Vec<DimVector> {
    set.iter()
        .map(|&i| catalog.entries()[i].dims.clone())
        .collect()
}

/// `Φ^power` applied to a dimension vector, re-exported at the tilting level
/// for slice and volume cross-checks.
pub fn translate_dims(q: &Quiver, d: &[i64], power: i64) -> Result<DimVector> {
    coxeter_transform(q, d, power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::exceptional_catalog;

    #[test]
    fn a3_has_five_tilting_modules() {
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        let tiltings = enumerate_tilting(&catalog).unwrap();
        let as_dims: Vec<Vec<Vec<i64>>> = tiltings
            .iter()
            .map(|t| dims_of_set(&catalog, t))
            .collect();
        let expected: Vec<Vec<Vec<i64>>> = [
            [[0i64, 0, 1], [0, 1, 1], [1, 1, 1]],
            [[0, 0, 1], [1, 0, 0], [1, 1, 1]],
            [[0, 1, 0], [0, 1, 1], [1, 1, 1]],
            [[0, 1, 0], [1, 1, 0], [1, 1, 1]],
            [[1, 0, 0], [1, 1, 0], [1, 1, 1]],
        ]
        .iter()
        .map(|t| t.iter().map(|d| d.to_vec()).collect())
        .collect();
        assert_eq!(as_dims, expected);
        // Every A3 tilting module contains the sincere indecomposable.
        for t in &as_dims {
            assert!(t.iter().any(|d| d == &vec![1, 1, 1]));
        }
    }

    #[test]
    fn a2_and_d4_tilting_counts() {
        let a2 = Quiver::linear(2);
        let cat2 = exceptional_catalog(&a2, 2).unwrap();
        assert_eq!(enumerate_tilting(&cat2).unwrap().len(), 2);
        let d4 = Quiver::d4();
        let cat4 = exceptional_catalog(&d4, 5).unwrap();
        assert_eq!(enumerate_tilting(&cat4).unwrap().len(), 20);
    }

    #[test]
    fn kronecker_tilting_pairs_at_cap() {
        let q = Quiver::kronecker();
        let catalog = exceptional_catalog(&q, 5).unwrap();
        let tiltings = enumerate_tilting(&catalog).unwrap();
        let as_dims: Vec<Vec<Vec<i64>>> = tiltings
            .iter()
            .map(|t| dims_of_set(&catalog, t))
            .collect();
        let expected: Vec<Vec<Vec<i64>>> = [
            [[0i64, 1], [1, 2]],
            [[1, 0], [2, 1]],
            [[1, 2], [2, 3]],
            [[2, 1], [3, 2]],
        ]
        .iter()
        .map(|t| t.iter().map(|d| d.to_vec()).collect())
        .collect();
        assert_eq!(as_dims, expected);
    }

    #[test]
    fn support_restricted_tilting_sets() {
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        // On the disconnected support {1, 3} every pair of the two simples
        // is the unique tilting set.
        let theta: BTreeSet<usize> = [0usize, 2].into_iter().collect();
        let sets = tilting_sets(&catalog, &theta).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(
            dims_of_set(&catalog, &sets[0]),
            vec![vec![0, 0, 1], vec![1, 0, 0]]
        );
        // Empty support: exactly the empty module.
        assert_eq!(
            tilting_sets(&catalog, &BTreeSet::new()).unwrap(),
            vec![Vec::<usize>::new()]
        );
        // Single vertex: the simple there.
        let theta1: BTreeSet<usize> = [1usize].into_iter().collect();
        let sets1 = tilting_sets(&catalog, &theta1).unwrap();
        assert_eq!(dims_of_set(&catalog, &sets1[0]), vec![vec![0, 1, 0]]);
    }

    #[test]
    fn complements_two_for_sincere_one_otherwise() {
        let q = Quiver::linear(2);
        let catalog = exceptional_catalog(&q, 2).unwrap();
        // Sincere almost complete: P(2) = (1,1) has two complements.
        let p2 = catalog.find(&[1, 1]).unwrap();
        let comp = complements(&catalog, &[p2]).unwrap();
        assert_eq!(
            comp.iter()
                .map(|&i| catalog.entries()[i].dims.clone())
                .collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]]
        );
        // Non-sincere: the simple (0,1) has only P(2) as partner — (1,0)
        // fails rigidity with it.
        let s2 = catalog.find(&[0, 1]).unwrap();
        let comp2 = complements(&catalog, &[s2]).unwrap();
        assert_eq!(comp2, vec![p2]);
        // Non-rigid partial input is rejected.
        let q3 = Quiver::linear(3);
        let cat3 = exceptional_catalog(&q3, 3).unwrap();
        let s1 = cat3.find(&[1, 0, 0]).unwrap();
        let s2m = cat3.find(&[0, 1, 0]).unwrap();
        assert!(complements(&cat3, &[s1, s2m]).is_err());
    }

    #[test]
    fn complement_count_matches_sincerity_on_a3() {
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        for t in enumerate_tilting(&catalog).unwrap() {
            for drop in 0..t.len() {
                let partial: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &i)| i)
                    .collect();
                let mut total = vec![0i64; 3];
                for &i in &partial {
                    for (acc, &d) in total.iter_mut().zip(&catalog.entries()[i].dims) {
                        *acc += d;
                    }
                }
                let count = complements(&catalog, &partial).unwrap().len();
                assert_eq!(count, if is_sincere(&total) { 2 } else { 1 });
            }
        }
    }

    #[test]
    fn torsion_pair_of_a2_tilting_module() {
        let q = Quiver::linear(2);
        let catalog = exceptional_catalog(&q, 2).unwrap();
        let tilt = [catalog.find(&[1, 1]).unwrap(), catalog.find(&[0, 1]).unwrap()];
        let split = torsion_classify(&catalog, &tilt).unwrap();
        let dims = |ix: &[usize]| {
            ix.iter()
                .map(|&i| catalog.entries()[i].dims.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(dims(&split.torsion), vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(dims(&split.torsion_free), vec![vec![1, 0]]);
        assert!(split.neither.is_empty());
    }

    #[test]
    fn torsion_neither_class_appears_on_a3() {
        // T = S(3) ⊕ P(1) ⊕ P(3) on linear A3: P(2) = (1,1,0) receives a
        // nonzero Ext from S(3) and a nonzero Hom from P(1), so it is
        // neither torsion nor torsion-free.
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        let tilt = [
            catalog.find(&[0, 0, 1]).unwrap(),
            catalog.find(&[1, 0, 0]).unwrap(),
            catalog.find(&[1, 1, 1]).unwrap(),
        ];
        let split = torsion_classify(&catalog, &tilt).unwrap();
        let neither_dims: Vec<Vec<i64>> = split
            .neither
            .iter()
            .map(|&i| catalog.entries()[i].dims.clone())
            .collect();
        assert_eq!(neither_dims, vec![vec![1, 1, 0]]);
    }

    #[test]
    fn slices_detected_and_rejected() {
        // The projectives always form a slice.
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        let projectives = [
            catalog.entries()[catalog.find(&[1, 0, 0]).unwrap()].rep.clone(),
            catalog.entries()[catalog.find(&[1, 1, 0]).unwrap()].rep.clone(),
            catalog.entries()[catalog.find(&[1, 1, 1]).unwrap()].rep.clone(),
        ];
        assert!(is_slice(&q, &projectives).unwrap());
        // A2: {P(2), S(2)} is the slice through the injectives.
        let a2 = Quiver::linear(2);
        let cat2 = exceptional_catalog(&a2, 2).unwrap();
        let pair = [
            cat2.entries()[cat2.find(&[1, 1]).unwrap()].rep.clone(),
            cat2.entries()[cat2.find(&[0, 1]).unwrap()].rep.clone(),
        ];
        assert!(is_slice(&a2, &pair).unwrap());
        // The square quiver's canonical tilting module contains regular
        // modules, hence is not a slice.
        let sq = Quiver::square_tilde_a22();
        let cat_sq = exceptional_catalog(&sq, 5).unwrap();
        let t: Vec<Representation> = [
            [1i64, 0, 0, 0],
            [0, 0, 0, 1],
            [1, 1, 0, 1],
            [1, 0, 1, 1],
        ]
        .iter()
        .map(|d| cat_sq.entries()[cat_sq.find(d).unwrap()].rep.clone())
        .collect();
        assert!(!is_slice(&sq, &t).unwrap());
        // Repeated summands are rejected even when their sum is sincere.
        let p2 = cat2.entries()[cat2.find(&[1, 1]).unwrap()].rep.clone();
        assert!(!is_slice(&a2, &[p2.clone(), p2]).unwrap());
        // Non-rigid sets are never slices: the simples extend each other.
        let s2 = Representation::simple(&a2, 1);
        let s1 = Representation::simple(&a2, 0);
        assert!(!is_slice(&a2, &[s1, s2]).unwrap());
    }

    #[test]
    fn schofield_sequences_on_a3() {
        let q = Quiver::linear(3);
        let catalog = exceptional_catalog(&q, 3).unwrap();
        let seqs = schofield_sequences(&catalog, &[1, 1, 0]).unwrap();
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].quotient, vec![0, 1, 0]);
        assert_eq!(seqs[0].sub, vec![1, 0, 0]);
        assert_eq!((seqs[0].quotient_mult, seqs[0].sub_mult), (1, 1));
        assert_eq!(seqs[0].ext_count, 1);
        let seqs = schofield_sequences(&catalog, &[1, 1, 1]).unwrap();
        assert_eq!(seqs.len(), 2);
        assert_eq!(
            (seqs[0].quotient.clone(), seqs[0].sub.clone()),
            (vec![0, 0, 1], vec![1, 1, 0])
        );
        assert_eq!(
            (seqs[1].quotient.clone(), seqs[1].sub.clone()),
            (vec![0, 1, 1], vec![1, 0, 0])
        );
        // Simples admit none.
        assert!(schofield_sequences(&catalog, &[0, 1, 0]).unwrap().is_empty());
        let _ = q;
    }

    #[test]
    fn schofield_count_is_support_minus_one() {
        for q in [Quiver::linear(3), Quiver::d4()] {
            let cap = positive_roots(&q)
                .unwrap()
                .iter()
                .map(|r| r.iter().sum())
                .max()
                .unwrap();
            let catalog = exceptional_catalog(&q, cap).unwrap();
            for entry in catalog.entries() {
                let count = schofield_sequences(&catalog, &entry.dims).unwrap().len();
                assert_eq!(
                    count,
                    support(&entry.dims).len() - 1,
                    "failed at {:?}",
                    entry.dims
                );
            }
        }
    }

    #[test]
    fn volume_sums_to_one_on_dynkin_types() {
        for q in [Quiver::linear(2), Quiver::linear(3), Quiver::d4()] {
            let report = volume_sum(&q).unwrap();
            assert_eq!(report.total, rat(1, 1), "failed for {:?}", q.vertex_ids());
        }
        let a3 = volume_sum(&Quiver::linear(3)).unwrap();
        assert_eq!(a3.terms.len(), 5);
        let values: Vec<Rat> = a3.terms.iter().map(|t| t.value.clone()).collect();
        assert_eq!(
            values,
            vec![rat(1, 6), rat(1, 3), rat(1, 6), rat(1, 6), rat(1, 6)]
        );
        assert!(volume_sum(&Quiver::kronecker()).is_err());
    }

    #[test]
    fn kronecker_partial_volumes_telescope() {
        assert_eq!(
            kronecker_preprojective_dims(4),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        for n in 1..=50usize {
            assert_eq!(kronecker_volume_partial(n), rat(n as i64, 2 * n as i64 + 1));
        }
    }

    #[test]
    fn kronecker_partial_volume_matches_catalog_route() {
        // Independent route: enumerate tilting modules from the capped
        // catalog, keep the preprojective pairs, and sum their terms.
        let q = Quiver::kronecker();
        let catalog = exceptional_catalog(&q, 9).unwrap();
        let tiltings = enumerate_tilting(&catalog).unwrap();
        let mut total = Rat::zero();
        for t in &tiltings {
            let dims = dims_of_set(&catalog, t);
            // Preprojective pairs are exactly those of shape (t, t+1).
            if dims.iter().all(|d| d[0] < d[1]) {
                let product: i64 = dims.iter().map(|d| d.iter().sum::<i64>()).product();
                total += rat(1, product);
            }
        }
        // Catalog at cap 9 holds P_1..P_5, hence 4 preprojective pairs.
        assert_eq!(total, kronecker_volume_partial(4));
    }

    #[test]
    fn weighted_kronecker_values_and_closed_form() {
        let one = rat(1, 1);
        let two = rat(2, 1);
        let three = rat(3, 1);
        assert_eq!(weighted_kronecker_partial(1, &one, &one).unwrap(), rat(1, 3));
        assert_eq!(weighted_kronecker_partial(1, &one, &two).unwrap(), rat(1, 4));
        assert_eq!(weighted_kronecker_partial(3, &one, &one).unwrap(), rat(3, 7));
        assert_eq!(
            weighted_kronecker_partial(2, &two, &three).unwrap(),
            rat(1, 12)
        );
        for n in [1usize, 2, 5, 19] {
            for (x, y) in [(&one, &one), (&one, &two), (&two, &three)] {
                assert_eq!(
                    weighted_kronecker_partial(n, x, y).unwrap(),
                    weighted_kronecker_closed(n, x, y).unwrap()
                );
            }
        }
        // Unweighted specialization agrees with the plain partial sums.
        for n in [1usize, 4, 10] {
            assert_eq!(
                weighted_kronecker_partial(n, &one, &one).unwrap(),
                kronecker_volume_partial(n)
            );
        }
    }

    #[test]
    fn weighted_limits_agree_only_on_equal_weights() {
        let one = rat(1, 1);
        let two = rat(2, 1);
        let (tele, quoted) = weighted_kronecker_limits(&one, &one).unwrap();
        assert_eq!(tele, quoted);
        assert_eq!(tele, rat(1, 2));
        let (tele, quoted) = weighted_kronecker_limits(&one, &two).unwrap();
        assert_eq!(tele, rat(1, 3));
        assert_eq!(quoted, rat(1, 4));
        assert_ne!(tele, quoted);
        assert!(weighted_kronecker_partial(1, &rat(-1, 1), &one).is_err());
    }

}
