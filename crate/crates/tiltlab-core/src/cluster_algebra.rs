//! Coefficient-free cluster-algebra machinery over an acyclic quiver:
//! exact Laurent-polynomial arithmetic, seeds with skew-symmetric exchange
//! matrices, mutation, breadth-first enumeration of every cluster, and the
//! bridge from cluster variables back to exceptional modules via their
//! denominator vectors.
//!
//! All arithmetic is exact: coefficients are big integers and every
//! exchange step performs certified Laurent division, so a division failure
//! would surface as an error instead of silent rounding.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::catalog::Catalog;
use crate::complex::{build_complex, ComplexVertex};
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::Int;

/// A Laurent polynomial in a fixed number of variables: a map from integer
/// exponent vectors (entries may be negative) to nonzero integer
/// coefficients. The map order doubles as the canonical serialization
/// order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Vec<i32>, Int>,
}

fn add_exp(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exp(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant one.
    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Int::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: usize, value: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; vars], value);
        }
        Self { vars, terms }
    }

    /// The `i`-th variable.
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut e = vec![0i32; vars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Int::one());
        Self { vars, terms }
    }

    /// Number of variables.
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// The terms, keyed by exponent vector.
    pub fn terms(&self) -> &BTreeMap<Vec<i32>, Int> {
        &self.terms
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::InvalidInput(
                "polynomials live in different variable counts".into(),
            ));
        }
        Ok(())
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Int::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Ok(Self {
            vars: self.vars,
            terms,
        })
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut terms: BTreeMap<Vec<i32>, Int> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = add_exp(ea, eb);
                let entry = terms.entry(e.clone()).or_insert_with(Int::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Ok(Self {
            vars: self.vars,
            terms,
        })
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow(&self, mut exp: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Componentwise minimum of the exponent vectors (zero for the zero
    /// polynomial).
    fn min_exponents(&self) -> Vec<i32> {
        let mut min = vec![0i32; self.vars];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                min.copy_from_slice(e);
                first = false;
            } else {
                for (m, &x) in min.iter_mut().zip(e) {
                    *m = (*m).min(x);
                }
            }
        }
        min
    }

    /// Exact division in the Laurent ring. Fails only when the division is
    /// inexact, which the exchange recurrences never produce on valid
    /// seeds.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        // Shift both operands into honest polynomials with componentwise
        // minimal exponent zero, divide there, and shift back. Monomials
        // are units in the Laurent ring, so this loses nothing.
        let alpha = self.min_exponents();
        let beta = divisor.min_exponents();
        let fhat: BTreeMap<Vec<i32>, Int> = self
            .terms
            .iter()
            .map(|(e, c)| (sub_exp(e, &alpha), c.clone()))
            .collect();
        let ghat: BTreeMap<Vec<i32>, Int> = divisor
            .terms
            .iter()
            .map(|(e, c)| (sub_exp(e, &beta), c.clone()))
            .collect();
        let (glt_e, glt_c) = ghat.last_key_value().expect("divisor is nonzero");
        let mut rem = fhat;
        let mut quotient: BTreeMap<Vec<i32>, Int> = BTreeMap::new();
        while let Some((rlt_e, rlt_c)) = rem.last_key_value() {
            let diff = sub_exp(rlt_e, glt_e);
            if diff.iter().any(|&d| d < 0) || (rlt_c % glt_c) != Int::zero() {
                return Err(Error::Internal("inexact Laurent division".into()));
            }
            let co = rlt_c / glt_c;
            for (ge, gc) in &ghat {
                let e = add_exp(&diff, ge);
                let entry = rem.entry(e.clone()).or_insert_with(Int::zero);
                *entry -= &co * gc;
                if entry.is_zero() {
                    rem.remove(&e);
                }
            }
            quotient.insert(diff, co);
        }
        let shift = sub_exp(&alpha, &beta);
        Ok(Self {
            vars: self.vars,
            terms: quotient
                .into_iter()
                .map(|(e, c)| (add_exp(&e, &shift), c))
                .collect(),
        })
    }

    /// The denominator vector: write the polynomial as `p / q` with `q` a
    /// monomial and `p` not divisible by any variable; the result is the
    /// exponent vector of `q`. Plain variables come out as `−e_i`.
    pub fn denominator_vector(&self) -> DimVector {
        self.min_exponents().iter().map(|&m| -(m as i64)).collect()
    }

    /// Canonical string form, naming variables by `names`: numerator terms
    /// in graded-lexicographic descending order over a monomial
    /// denominator, e.g. `(xy+yz+x+z)/(xyz)`. Single-character names are
    /// concatenated; longer names are joined with `*`.
    pub fn render(&self, names: &[String]) -> Result<String> {
        if names.len() != self.vars {
            return Err(Error::InvalidInput(
                "one variable name per polynomial variable is required".into(),
            ));
        }
        if self.is_zero() {
            return Ok("0".into());
        }
        // Concatenation is only unambiguous when every name is a single
        // letter; digit names would blur into coefficients and exponents.
        let single_letters = names.iter().all(|n| {
            let mut chars = n.chars();
            matches!((chars.next(), chars.next()), (Some(c), None) if c.is_alphabetic())
        });
        let sep = if single_letters { "" } else { "*" };
        let monomial = |exps: &[i32]| -> String {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(names[i].clone());
                } else {
                    let mut f = names[i].clone();
                    f.push('^');
                    f.push_str(&e.to_string());
                    factors.push(f);
                }
            }
            factors.join(sep)
        };
        let denom = self.denominator_vector();
        let lift: Vec<i32> = denom.iter().map(|&d| d.max(0) as i32).collect();
        // Numerator terms, graded-lex descending.
        let mut terms: Vec<(Vec<i32>, &Int)> = self
            .terms
            .iter()
            .map(|(e, c)| (add_exp(e, &lift), c))
            .collect();
        terms.sort_by(|a, b| {
            let (da, db) = (
                a.0.iter().sum::<i32>(),
                b.0.iter().sum::<i32>(),
            );
            db.cmp(&da).then_with(|| b.0.cmp(&a.0))
        });
        let mut numerator = String::new();
        for (i, (e, c)) in terms.iter().enumerate() {
            let vars_part = monomial(e);
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    numerator.push('-');
                }
            } else if c.is_negative() {
                numerator.push('-');
            } else {
                numerator.push('+');
            }
            if mag.is_one() && !vars_part.is_empty() {
                numerator.push_str(&vars_part);
            } else if vars_part.is_empty() {
                numerator.push_str(&mag.to_string());
            } else {
                numerator.push_str(&mag.to_string());
                if !sep.is_empty() {
                    numerator.push_str(sep);
                }
                numerator.push_str(&vars_part);
            }
        }
        let denom_exps: Vec<i32> = denom.iter().map(|&d| d.max(0) as i32).collect();
        if denom_exps.iter().all(|&d| d == 0) {
            return Ok(numerator);
        }
        let denom_part = monomial(&denom_exps);
        let denom_simple = denom_exps.iter().filter(|&&d| d > 0).count() == 1
            && denom_exps.iter().all(|&d| d <= 1);
        let mut out = String::new();
        if terms.len() > 1 {
            out.push('(');
            out.push_str(&numerator);
            out.push(')');
        } else {
            out.push_str(&numerator);
        }
        out.push('/');
        if denom_simple {
            out.push_str(&denom_part);
        } else {
            out.push('(');
            out.push_str(&denom_part);
            out.push(')');
        }
        Ok(out)
    }
}

/// A seed of the coefficient-free cluster algebra: a skew-symmetric
/// exchange matrix and one Laurent polynomial per quiver vertex, all in the
/// initial variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    matrix: Vec<Vec<i64>>,
    cluster: Vec<LaurentPoly>,
}

impl Seed {
    /// The exchange matrix; entry `(i, j)` counts arrows `i → j` minus
    /// arrows `j → i` on the initial seed and mutates from there.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// The cluster variables, indexed like the quiver vertices.
    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    /// The cluster as a canonically sorted set, the key used to identify a
    /// seed up to reordering.
    pub fn cluster_key(&self) -> Vec<LaurentPoly> {
        let mut key = self.cluster.clone();
        key.sort();
        key
    }
}

/// The seed every enumeration starts from: exchange matrix read off the
/// arrows, cluster = the initial variables.
pub fn initial_seed(q: &Quiver) -> Seed {
    let n = q.n();
    let mut matrix = vec![vec![0i64; n]; n];
    for &(t, h) in q.arrows() {
        matrix[t][h] += 1;
        matrix[h][t] -= 1;
    }
    let cluster = (0..n).map(|i| LaurentPoly::variable(n, i)).collect();
    Seed { matrix, cluster }
}

/// Mutation at vertex `k`: replaces the `k`-th variable through the
/// exchange relation
/// `x_k' = (∏_{b(i,k)>0} x_i^{b(i,k)} + ∏_{b(i,k)<0} x_i^{−b(i,k)}) / x_k`
/// (computed by exact Laurent division) and applies the matrix mutation
/// rule. Applying the same mutation twice returns the original seed.
pub fn mutate(seed: &Seed, k: usize) -> Result<Seed> {
    let n = seed.cluster.len();
    if k >= n {
        return Err(Error::InvalidInput(
            "mutation vertex is outside the quiver".into(),
        ));
    }
    let vars = seed.cluster[k].vars();
    let mut pos = LaurentPoly::one(vars);
    let mut neg = LaurentPoly::one(vars);
    for i in 0..n {
        let b = seed.matrix[i][k];
        if b > 0 {
            pos = pos.mul(&seed.cluster[i].pow(b as u32)?)?;
        } else if b < 0 {
            neg = neg.mul(&seed.cluster[i].pow((-b) as u32)?)?;
        }
    }
    let new_var = pos.add(&neg)?.div_exact(&seed.cluster[k])?;
    let mut matrix = seed.matrix.clone();
    for i in 0..n {
        for j in 0..n {
            if i == k || j == k {
                matrix[i][j] = -seed.matrix[i][j];
            } else {
                let (bik, bkj) = (seed.matrix[i][k], seed.matrix[k][j]);
                matrix[i][j] = seed.matrix[i][j] + (bik.abs() * bkj + bik * bkj.abs()) / 2;
            }
        }
    }
    let mut cluster = seed.cluster.clone();
    cluster[k] = new_var;
    Ok(Seed { matrix, cluster })
}

/// Result of the breadth-first mutation closure from the initial seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterEnumeration {
    /// Every cluster variable encountered, sorted canonically.
    pub variables: Vec<LaurentPoly>,
    /// Every cluster as a sorted variable set, the list itself sorted.
    pub clusters: Vec<Vec<LaurentPoly>>,
    /// Whether the closure finished before the depth cap; `false` flags a
    /// truncated (infinite-type) enumeration.
    pub complete: bool,
}

/// Breadth-first closure of the initial seed under mutation, deduplicating
/// seeds by their unordered variable sets. Stops after `depth_cap` rounds
/// of mutations; finite types close long before sensible caps.
pub fn enumerate_clusters(q: &Quiver, depth_cap: usize) -> Result<ClusterEnumeration> {
    let seed = initial_seed(q);
    let mut seen: BTreeSet<Vec<LaurentPoly>> = BTreeSet::new();
    let mut variables: BTreeSet<LaurentPoly> = seed.cluster.iter().cloned().collect();
    seen.insert(seed.cluster_key());
    let mut frontier = vec![seed];
    let mut complete = true;
    for _depth in 0..depth_cap {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for s in &frontier {
            for k in 0..s.cluster.len() {
                let m = mutate(s, k)?;
                if seen.insert(m.cluster_key()) {
                    variables.extend(m.cluster.iter().cloned());
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    if !frontier.is_empty() {
        complete = false;
    }
    Ok(ClusterEnumeration {
        variables: variables.into_iter().collect(),
        clusters: seen.into_iter().collect(),
        complete,
    })
}

/// Outcome of matching cluster variables against an exceptional catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Number of cluster variables found.
    pub variable_count: usize,
    /// Number of clusters found.
    pub cluster_count: usize,
    /// Denominator vectors hit `{dim E} ∪ {−e_i}` bijectively.
    pub bijection_holds: bool,
    /// Clusters, read through denominators, are exactly the maximal
    /// simplices of the extended complex.
    pub clusters_match_simplices: bool,
    /// A variable belongs to a cluster exactly when every dual form of the
    /// cluster's cone is nonnegative on its denominator vector.
    pub fan_inequalities_hold: bool,
    /// Catalog dimension vectors (or negated units) no variable maps to.
    pub missing_targets: Vec<DimVector>,
    /// Denominator vectors that match no catalog entry or negated unit.
    pub unmatched_variables: Vec<DimVector>,
}

impl CorrespondenceReport {
    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.bijection_holds && self.clusters_match_simplices && self.fan_inequalities_hold
    }
}

/// Enumerates the cluster variables of the catalog's quiver and verifies
/// the denominator-vector dictionary: variables ↔ exceptional modules and
/// negated simples, clusters ↔ maximal simplices of the extended complex,
/// membership ↔ the cone inequalities. Requires a complete catalog.
///
/// Convention: the initial variable at vertex `i` (denominator `−e_i`)
/// is matched with the negated *simple* root at `i`, mirroring how the
/// extended complex labels its negative vertices. The rival convention
/// that uses negated projective dimension vectors instead is deliberately
/// not implemented.
pub fn correspondence_check(catalog: &Catalog) -> Result<CorrespondenceReport> {
    if !catalog.is_complete() {
        return Err(Error::Precondition(
            "the correspondence needs a complete catalog".into(),
        ));
    }
    let q = catalog.quiver();
    let n = q.n();
    let enumeration = enumerate_clusters(q, 64)?;
    if !enumeration.complete {
        return Err(Error::Internal(
            "mutation closure did not finish on a finite type".into(),
        ));
    }
    // Denominator dictionary.
    let mut targets: BTreeMap<DimVector, ComplexVertex> = BTreeMap::new();
    for (ix, entry) in catalog.entries().iter().enumerate() {
        targets.insert(entry.dims.clone(), ComplexVertex::Module(ix));
    }
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = -1;
        targets.insert(e, ComplexVertex::Negative(i));
    }
    let mut hit: BTreeSet<DimVector> = BTreeSet::new();
    let mut unmatched = Vec::new();
    let mut lookup: BTreeMap<LaurentPoly, ComplexVertex> = BTreeMap::new();
    for v in &enumeration.variables {
        let d = v.denominator_vector();
        match targets.get(&d) {
            Some(&vertex) => {
                hit.insert(d);
                lookup.insert(v.clone(), vertex);
            }
            None => unmatched.push(d),
        }
    }
    let missing: Vec<DimVector> = targets
        .keys()
        .filter(|d| !hit.contains(*d))
        .cloned()
        .collect();
    let bijection_holds = unmatched.is_empty()
        && missing.is_empty()
        && hit.len() == enumeration.variables.len();
    // Clusters against maximal simplices.
    let complex = build_complex(catalog, true)?;
    let mut clusters_match_simplices = bijection_holds;
    if bijection_holds {
        let mut as_vertices: Vec<Vec<ComplexVertex>> = enumeration
            .clusters
            .iter()
            .map(|cluster| {
                let mut verts: Vec<ComplexVertex> =
                    cluster.iter().map(|v| lookup[v]).collect();
                verts.sort_unstable();
                verts
            })
            .collect();
        as_vertices.sort();
        clusters_match_simplices = as_vertices == complex.maximal_simplices();
    }
    // Cone inequalities: membership of a variable in a cluster equals
    // nonnegativity of all dual forms on its denominator vector.
    let mut fan_inequalities_hold = bijection_holds;
    if bijection_holds {
        'outer: for simplex in complex.maximal_simplices() {
            let cone = complex.cone_forms(simplex)?;
            for v in &enumeration.variables {
                let inside = cone.contains(&v.denominator_vector());
                let member = simplex.contains(&lookup[v]);
                if inside != member {
                    fan_inequalities_hold = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(CorrespondenceReport {
        variable_count: enumeration.variables.len(),
        cluster_count: enumeration.clusters.len(),
        bijection_holds,
        clusters_match_simplices,
        fan_inequalities_hold,
        missing_targets: missing,
        unmatched_variables: unmatched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::exceptional_catalog;

    fn xyz_quiver() -> Quiver {
        Quiver::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![("y".into(), "x".into()), ("z".into(), "y".into())],
        )
        .unwrap()
    }

    #[test]
    fn initial_seeds_read_off_the_arrows() {
        let s = initial_seed(&Quiver::linear(3));
        assert_eq!(
            s.matrix(),
            &[vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]]
        );
        let names: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let rendered: Vec<String> = s
            .cluster()
            .iter()
            .map(|v| v.render(&names).unwrap())
            .collect();
        assert_eq!(rendered, vec!["x", "y", "z"]);

        let s = initial_seed(&Quiver::linear(1));
        assert_eq!(s.matrix(), &[vec![0]]);

        let s = initial_seed(&Quiver::kronecker());
        assert_eq!(s.matrix(), &[vec![0, 2], vec![-2, 0]]);
    }

    #[test]
    fn first_mutations_match_the_exchange_relation() {
        let q = xyz_quiver();
        let names = q.vertex_ids().to_vec();
        let s = initial_seed(&q);
        let m0 = mutate(&s, 0).unwrap();
        assert_eq!(m0.cluster()[0].render(&names).unwrap(), "(y+1)/x");
        let m1 = mutate(&s, 1).unwrap();
        assert_eq!(m1.cluster()[1].render(&names).unwrap(), "(x+z)/y");
        // Mutation is an involution on matrix and cluster alike.
        assert_eq!(&mutate(&m0, 0).unwrap(), &s);
        assert_eq!(&mutate(&m1, 1).unwrap(), &s);
        // Skew-symmetry survives mutation.
        for seed in [&m0, &m1] {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(seed.matrix()[i][j], -seed.matrix()[j][i]);
                }
            }
        }
        assert!(mutate(&s, 3).is_err());
    }

    #[test]
    fn involution_holds_along_a_mutation_walk() {
        let q = Quiver::d4();
        let mut s = initial_seed(&q);
        for step in [0usize, 1, 2, 3, 0, 2, 1, 3, 0, 1] {
            for k in 0..4 {
                let twice = mutate(&mutate(&s, k).unwrap(), k).unwrap();
                assert_eq!(&twice, &s);
            }
            s = mutate(&s, step).unwrap();
        }
    }

    #[test]
    fn three_vertex_line_has_nine_variables_in_canonical_strings() {
        let q = xyz_quiver();
        let names = q.vertex_ids().to_vec();
        let enumeration = enumerate_clusters(&q, 32).unwrap();
        assert!(enumeration.complete);
        assert_eq!(enumeration.clusters.len(), 14);
        let rendered: BTreeSet<String> = enumeration
            .variables
            .iter()
            .map(|v| v.render(&names).unwrap())
            .collect();
        let expected: BTreeSet<String> = [
            "x",
            "y",
            "z",
            "(y+1)/x",
            "(y+1)/z",
            "(x+z)/y",
            "(yz+x+z)/(xy)",
            "(xy+x+z)/(yz)",
            "(xy+yz+x+z)/(xyz)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(rendered, expected);
        // Every cluster has one variable per vertex; every variable has
        // positive coefficients.
        for cluster in &enumeration.clusters {
            assert_eq!(cluster.len(), 3);
        }
        for v in &enumeration.variables {
            assert!(v.terms().values().all(|c| c.is_positive()));
        }
    }

    #[test]
    fn one_and_two_vertex_enumerations() {
        let enumeration = enumerate_clusters(&Quiver::linear(1), 8).unwrap();
        assert!(enumeration.complete);
        let names = vec!["x".to_string()];
        let rendered: BTreeSet<String> = enumeration
            .variables
            .iter()
            .map(|v| v.render(&names).unwrap())
            .collect();
        assert_eq!(
            rendered,
            ["x", "2/x"].iter().map(|s| s.to_string()).collect()
        );
        assert_eq!(enumeration.clusters.len(), 2);

        let enumeration = enumerate_clusters(&Quiver::linear(2), 16).unwrap();
        assert!(enumeration.complete);
        assert_eq!(enumeration.variables.len(), 5);
        assert_eq!(enumeration.clusters.len(), 5);
    }

    #[test]
    fn denominator_vectors_follow_the_dictionary() {
        let q = xyz_quiver();
        let s = initial_seed(&q);
        assert_eq!(s.cluster()[0].denominator_vector(), vec![-1, 0, 0]);
        let m0 = mutate(&s, 0).unwrap();
        assert_eq!(m0.cluster()[0].denominator_vector(), vec![1, 0, 0]);
        // The sincere variable has the sincere denominator.
        let enumeration = enumerate_clusters(&q, 32).unwrap();
        let names = q.vertex_ids().to_vec();
        let sincere = enumeration
            .variables
            .iter()
            .find(|v| v.render(&names).unwrap() == "(xy+yz+x+z)/(xyz)")
            .unwrap();
        assert_eq!(sincere.denominator_vector(), vec![1, 1, 1]);
    }

    #[test]
    fn truncated_enumeration_is_flagged_on_infinite_type() {
        let enumeration = enumerate_clusters(&Quiver::kronecker(), 6).unwrap();
        assert!(!enumeration.complete);
        // Every variable still is a genuine Laurent polynomial over the
        // integers — that is what exact division enforces.
        for v in &enumeration.variables {
            assert!(!v.is_zero());
        }
    }

    #[test]
    fn correspondence_reports_pass_on_small_dynkin_types() {
        for (q, cap) in [
            (Quiver::linear(1), 1i64),
            (Quiver::linear(2), 2),
            (Quiver::linear(3), 3),
            (Quiver::d4(), 5),
        ] {
            let catalog = exceptional_catalog(&q, cap).unwrap();
            let report = correspondence_check(&catalog).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(
                report.variable_count,
                catalog.entries().len() + q.n()
            );
        }
        // D4: 16 variables over 50 clusters.
        let catalog = exceptional_catalog(&Quiver::d4(), 5).unwrap();
        let report = correspondence_check(&catalog).unwrap();
        assert_eq!((report.variable_count, report.cluster_count), (16, 50));
        // Capped catalogs are refused.
        let capped = exceptional_catalog(&Quiver::kronecker(), 5).unwrap();
        assert!(correspondence_check(&capped).is_err());
    }

    #[test]
    fn laurent_arithmetic_corner_cases() {
        let x = LaurentPoly::variable(2, 0);
        let y = LaurentPoly::variable(2, 1);
        let sum = x.add(&y).unwrap();
        let prod = sum.mul(&sum).unwrap();
        // (x+y)² / (x+y) = x+y.
        assert_eq!(prod.div_exact(&sum).unwrap(), sum);
        // Division by zero is rejected; dividing zero succeeds.
        assert!(sum.div_exact(&LaurentPoly::zero(2)).is_err());
        assert!(LaurentPoly::zero(2)
            .div_exact(&sum)
            .unwrap()
            .is_zero());
        // Inexact division is detected.
        assert!(prod.add(&LaurentPoly::one(2)).unwrap().div_exact(&sum).is_err());
        // Monomials divide everything: (x+y)/x = 1 + y/x.
        let q = sum.div_exact(&x).unwrap();
        assert_eq!(q.denominator_vector(), vec![1, 0]);
        // Mixed variable counts are rejected.
        assert!(x.add(&LaurentPoly::one(3)).is_err());
        // Rendering with multi-character names uses explicit separators.
        let names = vec!["u1".to_string(), "v2".to_string()];
        assert_eq!(prod.render(&names).unwrap(), "u1^2+2*u1*v2+v2^2");
        // Digit names also get separators; bare concatenation would make
        // coefficients, names, and exponents run together.
        let names = vec!["1".to_string(), "2".to_string()];
        assert_eq!(prod.render(&names).unwrap(), "1^2+2*1*2+2^2");
    }
}
