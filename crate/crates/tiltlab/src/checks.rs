//! The `check` subcommand: a deterministic sweep of every documented
//! invariant, from the bilinear-form identities up to the cluster-variable
//! correspondence. Randomized pieces use fixed seeds so reruns are
//! byte-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tiltlab_core::catalog::{exceptional_catalog, Catalog};
use tiltlab_core::cluster_algebra::{
    correspondence_check, enumerate_clusters, initial_seed, mutate, Seed,
};
use tiltlab_core::cluster_cat::{
    all_objects, cluster_complements, cluster_ext1, cluster_tilted_dims, cluster_tilted_quiver,
    exchange_graph, AlgebraPresentation, ClusterObject,
};
use tiltlab_core::complex::{build_complex, ComplexVertex};
use tiltlab_core::matrix::Mat;
use tiltlab_core::quiver::{
    euler_form, is_sincere, positive_roots, reflect_quiver, simple_reflection, support,
    tits_form, coxeter_transform, Quiver,
};
use tiltlab_core::rep::{
    coxeter_functor, hom_ext, is_exceptional, reflect_at_sink, reflect_at_source,
    semi_invariant, Representation,
};
use tiltlab_core::tilting::{
    complements, enumerate_tilting, is_slice, kronecker_volume_partial, schofield_sequences,
    torsion_classify, volume_sum, weighted_kronecker_closed, weighted_kronecker_limits,
    weighted_kronecker_partial,
};
use tiltlab_core::{rat, rint, Rat};

/// Outcome of one named check.
pub struct CheckLine {
    /// Property name, `module/property` style.
    pub name: String,
    /// Whether the property held everywhere it was tested.
    pub passed: bool,
    /// Counts on success; the first violation on failure.
    pub detail: String,
}

type Check = Result<String, String>;

fn ce<T>(r: Result<T, tiltlab_core::Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn add(lines: &mut Vec<CheckLine>, name: &str, result: Check) {
    match result {
        Ok(detail) => lines.push(CheckLine {
            name: name.into(),
            passed: true,
            detail,
        }),
        Err(detail) => lines.push(CheckLine {
            name: name.into(),
            passed: false,
            detail,
        }),
    }
}

fn bench_quivers() -> Vec<Quiver> {
    vec![
        Quiver::linear(2),
        Quiver::linear(3),
        Quiver::d4(),
        Quiver::kronecker(),
        Quiver::square_tilde_a22(),
    ]
}

fn dynkin_bench() -> Vec<(Quiver, i64)> {
    vec![
        (Quiver::linear(2), 2),
        (Quiver::linear(3), 3),
        (Quiver::d4(), 5),
    ]
}

fn dynkin_catalogs() -> Result<Vec<Catalog>, String> {
    dynkin_bench()
        .into_iter()
        .map(|(q, cap)| ce(exceptional_catalog(&q, cap)))
        .collect()
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-4i64..=4)).collect()
}

fn random_rep(rng: &mut ChaCha8Rng, q: &Quiver) -> Result<Representation, String> {
    let dims: Vec<i64> = (0..q.n()).map(|_| rng.gen_range(0i64..=3)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|&(t, h)| {
            let (rows, cols) = (dims[h] as usize, dims[t] as usize);
            let mut m = Mat::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, rint(rng.gen_range(-2i64..=2)));
                }
            }
            m
        })
        .collect();
    ce(Representation::new(q, dims, maps))
}

// ------------------------------------------------------------------
// quiver-level form and reflection identities
// ------------------------------------------------------------------

fn check_form_bilinearity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0usize;
    for q in bench_quivers() {
        for _ in 0..40 {
            let d = random_vector(&mut rng, q.n());
            let e = random_vector(&mut rng, q.n());
            let sum: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a + b).collect();
            let symmetrized = ce(euler_form(&q, &d, &e))? + ce(euler_form(&q, &e, &d))?;
            let by_tits =
                ce(tits_form(&q, &sum))? - ce(tits_form(&q, &d))? - ce(tits_form(&q, &e))?;
            if symmetrized != by_tits {
                return Err(format!("symmetrized form mismatch at d={d:?} e={e:?}"));
            }
            if ce(tits_form(&q, &d))? != ce(euler_form(&q, &d, &d))? {
                return Err(format!("tits(d) != <d,d> at d={d:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} vector pairs over 5 quivers"))
}

fn check_root_counts() -> Check {
    for (q, expected) in [
        (Quiver::linear(2), 3usize),
        (Quiver::linear(3), 6),
        (Quiver::d4(), 12),
    ] {
        let count = ce(positive_roots(&q))?.len();
        if count != expected {
            return Err(format!("expected {expected} roots, found {count}"));
        }
    }
    Ok("A2: 3, A3: 6, D4: 12".into())
}

fn check_coxeter_inverse() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut checked = 0usize;
    for q in bench_quivers() {
        for _ in 0..20 {
            let d = random_vector(&mut rng, q.n());
            let forward = ce(coxeter_transform(&q, &d, 1))?;
            let back = ce(coxeter_transform(&q, &forward, -1))?;
            if back != d {
                return Err(format!("coxeter round trip moved {d:?} to {back:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} round trips over 5 quivers"))
}

fn check_reflection_preserves_tits() -> Check {
    let mut checked = 0usize;
    for (q, _) in dynkin_bench() {
        for root in ce(positive_roots(&q))? {
            for i in 0..q.n() {
                let r = ce(simple_reflection(&q, i, &root))?;
                if ce(tits_form(&q, &r))? != ce(tits_form(&q, &root))? {
                    return Err(format!("reflection at {i} broke the form on {root:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (root, vertex) pairs"))
}

fn check_reflection_reindexing() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0usize;
    for q in bench_quivers() {
        for i in 0..q.n() {
            if !q.is_sink(i) && !q.is_source(i) {
                continue;
            }
            let reflected = ce(reflect_quiver(&q, i))?;
            for _ in 0..10 {
                let d = random_vector(&mut rng, q.n());
                let a = ce(simple_reflection(&q, i, &d))?;
                let b = ce(simple_reflection(&reflected, i, &d))?;
                if a != b {
                    return Err(format!(
                        "reflection at {i} differs across reorientation on {d:?}"
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} samples at sinks/sources"))
}

// ------------------------------------------------------------------
// representation-level identities
// ------------------------------------------------------------------

fn check_euler_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0usize;
    for q in bench_quivers() {
        for _ in 0..40 {
            let v = random_rep(&mut rng, &q)?;
            let w = random_rep(&mut rng, &q)?;
            let (hom, ext) = ce(hom_ext(&q, &v, &w))?;
            if hom as i64 - ext as i64 != ce(euler_form(&q, v.dims(), w.dims()))? {
                return Err(format!(
                    "hom - ext != <d,e> at dims {:?} -> {:?}",
                    v.dims(),
                    w.dims()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} random representation pairs"))
}

fn check_translate_formula() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for a in catalog.entries() {
            let ta = ce(coxeter_functor(q, &a.rep, 1))?;
            if ta.is_zero() {
                continue;
            }
            for b in catalog.entries() {
                let ext = ce(hom_ext(q, &a.rep, &b.rep))?.1;
                let hom = ce(hom_ext(q, &b.rep, &ta))?.0;
                if ext != hom {
                    return Err(format!(
                        "ext({:?}, {:?}) = {ext} but hom(-, translate) = {hom}",
                        a.dims, b.dims
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs with non-projective source"))
}

fn check_translate_round_trip() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for e in catalog.entries() {
            let ta = ce(coxeter_functor(q, &e.rep, 1))?;
            if ta.is_zero() {
                continue;
            }
            let back = ce(coxeter_functor(q, &ta, -1))?;
            if back.dims() != e.rep.dims() {
                return Err(format!("translate round trip moved {:?}", e.dims));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} non-projective modules"))
}

fn check_bgp_preserves_exceptional() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for i in 0..q.n() {
            for e in catalog.entries() {
                let simple_at_i =
                    e.dims.iter().enumerate().all(|(j, &d)| d == i64::from(j == i));
                if simple_at_i {
                    continue;
                }
                if q.is_sink(i) {
                    let (rq, image) = ce(reflect_at_sink(q, i, &e.rep))?;
                    if !ce(is_exceptional(&rq, &image))? {
                        return Err(format!("sink reflection at {i} broke {:?}", e.dims));
                    }
                    checked += 1;
                } else if q.is_source(i) {
                    let (rq, image) = ce(reflect_at_source(q, i, &e.rep))?;
                    if !ce(is_exceptional(&rq, &image))? {
                        return Err(format!("source reflection at {i} broke {:?}", e.dims));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (module, reflection) pairs"))
}

fn check_semi_invariant_vanishing() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for v in catalog.entries() {
            for w in catalog.entries() {
                let pair = ce(hom_ext(q, &v.rep, &w.rep))?;
                match ce(semi_invariant(q, &v.rep, &w.rep)) {
                    Ok(det) => {
                        let nonzero = det != rint(0);
                        if nonzero != (pair == (0, 0)) {
                            return Err(format!(
                                "semi-invariant {det} disagrees with hom/ext {pair:?} \
                                 at {:?} -> {:?}",
                                v.dims, w.dims
                            ));
                        }
                        checked += 1;
                    }
                    // Non-square assembled maps have no determinant; the
                    // semi-invariant is only defined on orthogonal weights.
                    Err(_) => continue,
                }
            }
        }
    }
    Ok(format!("{checked} square pairs"))
}

// ------------------------------------------------------------------
// tilting-level enumerations
// ------------------------------------------------------------------

fn check_tilting_size_and_independence() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let n = catalog.quiver().n();
        for t in ce(enumerate_tilting(&catalog))? {
            if t.len() != n {
                return Err(format!("tilting set {t:?} has size {} != {n}", t.len()));
            }
            let rows: Vec<Vec<Rat>> = t
                .iter()
                .map(|&i| {
                    catalog.entries()[i]
                        .dims
                        .iter()
                        .map(|&d| rint(d))
                        .collect()
                })
                .collect();
            let rank = ce(Mat::from_rows(rows))?.rank();
            if rank != n {
                return Err(format!("dimension vectors of {t:?} are dependent"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tilting modules"))
}

fn almost_complete_sets(catalog: &Catalog) -> Result<Vec<Vec<usize>>, String> {
    let tables = ce(catalog.tables())?;
    let len = catalog.entries().len();
    let n = catalog.quiver().n();
    let compatible = |a: usize, b: usize| tables.ext[a][b] == 0 && tables.ext[b][a] == 0;
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((set, from)) = stack.pop() {
        if set.len() == n - 1 {
            out.push(set);
            continue;
        }
        for cand in from..len {
            if set.iter().all(|&s| compatible(s, cand)) {
                let mut next = set.clone();
                next.push(cand);
                stack.push((next, cand + 1));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn check_complement_counts() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let n = catalog.quiver().n();
        for set in almost_complete_sets(&catalog)? {
            let comps = ce(complements(&catalog, &set))?;
            let mut total = vec![0i64; n];
            for &i in &set {
                for (t, d) in total.iter_mut().zip(&catalog.entries()[i].dims) {
                    *t += d;
                }
            }
            if !(comps.len() == 1 || comps.len() == 2) {
                return Err(format!("{} complements for {set:?}", comps.len()));
            }
            if (comps.len() == 2) != is_sincere(&total) {
                return Err(format!("sincerity mismatch for {set:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} almost complete modules"))
}

fn check_complement_exchange_direction() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for set in almost_complete_sets(&catalog)? {
            let comps = ce(complements(&catalog, &set))?;
            if comps.len() != 2 {
                continue;
            }
            let x = &catalog.entries()[comps[0]].rep;
            let y = &catalog.entries()[comps[1]].rep;
            let xy = ce(hom_ext(q, x, y))?.1;
            let yx = ce(hom_ext(q, y, x))?.1;
            if (xy == 0) == (yx == 0) {
                return Err(format!(
                    "complements of {set:?} have ext dims {xy}/{yx}; exactly one \
                     direction must be nonzero"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} complement pairs"))
}

fn check_torsion_classification() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for t in ce(enumerate_tilting(&catalog))? {
            let split = ce(torsion_classify(&catalog, &t))?;
            for i in &split.torsion {
                if split.torsion_free.contains(i) {
                    return Err(format!("entry {i} in both classes for {t:?}"));
                }
            }
            let reps: Vec<Representation> = t
                .iter()
                .map(|&i| catalog.entries()[i].rep.clone())
                .collect();
            if ce(is_slice(q, &reps))? && !split.neither.is_empty() {
                return Err(format!(
                    "slice tilting {t:?} left {:?} unclassified",
                    split.neither
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tilting modules"))
}

fn check_schofield_counts() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        for e in catalog.entries() {
            let seqs = ce(schofield_sequences(&catalog, &e.dims))?;
            if seqs.len() != support(&e.dims).len() - 1 {
                return Err(format!(
                    "{:?} has {} sequences, support {}",
                    e.dims,
                    seqs.len(),
                    support(&e.dims).len()
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} exceptional modules"))
}

fn check_volume_identities() -> Check {
    for (q, _) in dynkin_bench() {
        if ce(volume_sum(&q))?.total != rint(1) {
            return Err(format!("volume sum over {:?} is not 1", q.vertex_ids()));
        }
    }
    for n in 1..=50usize {
        if kronecker_volume_partial(n) != rat(n as i64, 2 * n as i64 + 1) {
            return Err(format!("partial volume at {n} missed n/(2n+1)"));
        }
    }
    Ok("3 full sums = 1; 50 partial sums = n/(2n+1)".into())
}

fn check_weighted_series() -> Check {
    let grid = [rat(1, 1), rat(1, 2), rat(2, 3), rat(3, 1), rat(5, 7)];
    let mut checked = 0usize;
    let mut agree_only_on_diagonal = true;
    for x in &grid {
        for y in &grid {
            for n in 1..=12usize {
                if ce(weighted_kronecker_partial(n, x, y))?
                    != ce(weighted_kronecker_closed(n, x, y))?
                {
                    return Err(format!("weighted sum != closed form at x={x} y={y} n={n}"));
                }
                checked += 1;
            }
            let (telescoped, quoted) = ce(weighted_kronecker_limits(x, y))?;
            if (telescoped == quoted) != (x == y) {
                agree_only_on_diagonal = false;
            }
        }
    }
    if !agree_only_on_diagonal {
        return Err("candidate limits agree off the diagonal".into());
    }
    Ok(format!(
        "{checked} partial sums match; candidate limits agree exactly when x = y"
    ))
}

// ------------------------------------------------------------------
// complexes and fans
// ------------------------------------------------------------------

fn check_plain_inside_extended() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let plain = ce(build_complex(&catalog, false))?;
        let extended = ce(build_complex(&catalog, true))?;
        for face in plain.faces() {
            if !extended.is_face(face) {
                return Err(format!("plain face {face:?} missing from extension"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} faces embedded"))
}

fn check_sphere_counts() -> Check {
    let catalog = ce(exceptional_catalog(&Quiver::linear(3), 3))?;
    let complex = ce(build_complex(&catalog, true))?;
    if complex.f_vector() != vec![9, 21, 14] || complex.euler_characteristic() != 2 {
        return Err(format!(
            "A3 extension has f-vector {:?}, euler {}",
            complex.f_vector(),
            complex.euler_characteristic()
        ));
    }
    for catalog in dynkin_catalogs()? {
        let complex = ce(build_complex(&catalog, true))?;
        let report = complex.pseudomanifold_report();
        if !report.violations.is_empty() || !report.boundary.is_empty() {
            return Err("extended complex has boundary or violations".into());
        }
    }
    Ok("A3: f = (9, 21, 14), euler 2; all extensions boundary-free".into())
}

fn check_negatives_share_a_simplex() -> Check {
    for catalog in dynkin_catalogs()? {
        let n = catalog.quiver().n();
        let complex = ce(build_complex(&catalog, true))?;
        let all_negatives: Vec<ComplexVertex> =
            (0..n).map(ComplexVertex::Negative).collect();
        if !complex
            .maximal_simplices()
            .iter()
            .any(|s| s == &all_negatives)
        {
            return Err("the all-negatives simplex is not maximal".into());
        }
    }
    Ok("the zero-module simplex is maximal in every extension".into())
}

fn check_fan_property() -> Check {
    let mut covered = 0usize;
    for (q, cap) in [(Quiver::linear(2), 2i64), (Quiver::linear(3), 3)] {
        let n = q.n();
        let catalog = ce(exceptional_catalog(&q, cap))?;
        let complex = ce(build_complex(&catalog, true))?;
        let cones: Vec<_> = complex
            .maximal_simplices()
            .iter()
            .map(|s| complex.cone_forms(s))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let mut point = vec![-3i64; n];
        loop {
            let containing = cones.iter().filter(|c| c.contains(&point)).count();
            let strict = cones.iter().filter(|c| c.contains_strictly(&point)).count();
            if containing == 0 {
                return Err(format!("point {point:?} is outside every cone"));
            }
            if strict > 1 {
                return Err(format!("point {point:?} is interior to {strict} cones"));
            }
            if strict == 1 && containing != 1 {
                return Err(format!(
                    "interior point {point:?} also lies in another cone"
                ));
            }
            covered += 1;
            // Advance the odometer over the box [-3, 3]^n.
            let mut i = 0;
            while i < n {
                point[i] += 1;
                if point[i] <= 3 {
                    break;
                }
                point[i] = -3;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Ok(format!("{covered} lattice points covered, interiors unique"))
}

fn check_boundary_is_non_sincere() -> Check {
    for catalog in dynkin_catalogs()? {
        let complex = ce(build_complex(&catalog, false))?;
        let report = complex.pseudomanifold_report();
        if !report.violations.is_empty() {
            return Err("plain complex has a ridge in >2 maximal simplices".into());
        }
        if report.boundary_matches_non_sincere != Some(true) {
            return Err("boundary ridges are not exactly the non-sincere ones".into());
        }
    }
    Ok("boundary = non-sincere ridges for A2, A3, D4".into())
}

// ------------------------------------------------------------------
// cluster category
// ------------------------------------------------------------------

fn check_pairing_symmetry() -> Check {
    let mut checked = 0usize;
    let mut catalogs = dynkin_catalogs()?;
    catalogs.push(ce(exceptional_catalog(&Quiver::kronecker(), 4))?);
    for catalog in &catalogs {
        let objects = all_objects(catalog);
        for &x in &objects {
            for &y in &objects {
                if ce(cluster_ext1(catalog, x, y))? != ce(cluster_ext1(catalog, y, x))? {
                    return Err(format!("pairing asymmetric at {x:?}, {y:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} object pairs (including a capped catalog)"))
}

fn check_compatibility_equals_complex() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let complex = ce(build_complex(&catalog, true))?;
        let objects = all_objects(&catalog);
        let as_vertex = |o: ClusterObject| match o {
            ClusterObject::Module(i) => ComplexVertex::Module(i),
            ClusterObject::ShiftedProjective(i) => ComplexVertex::Negative(i),
        };
        for (ai, &a) in objects.iter().enumerate() {
            for &b in &objects[ai + 1..] {
                let compatible = ce(cluster_ext1(&catalog, a, b))? == 0;
                let mut face = vec![as_vertex(a), as_vertex(b)];
                face.sort_unstable();
                if complex.is_face(&face) != compatible {
                    return Err(format!("face relation disagrees at {a:?}, {b:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} unordered pairs"))
}

fn check_two_complements_in_cluster_category() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let complex = ce(build_complex(&catalog, true))?;
        let objects = all_objects(&catalog);
        let as_object = |v: ComplexVertex| match v {
            ComplexVertex::Module(i) => ClusterObject::Module(i),
            ComplexVertex::Negative(i) => ClusterObject::ShiftedProjective(i),
        };
        for simplex in complex.maximal_simplices() {
            for drop in 0..simplex.len() {
                let rest: Vec<ClusterObject> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| as_object(v))
                    .collect();
                let (a, b) = ce(cluster_complements(&catalog, &rest))?;
                let dropped = as_object(simplex[drop]);
                if a != dropped && b != dropped {
                    return Err(format!("dropping {dropped:?} was not restored"));
                }
                checked += 1;
            }
        }
        let _ = objects;
    }
    Ok(format!("{checked} almost-complete objects, 2 complements each"))
}

fn check_cta_dimension_identity() -> Check {
    let mut checked = 0usize;
    for catalog in dynkin_catalogs()? {
        let q = catalog.quiver();
        for t in ce(enumerate_tilting(&catalog))? {
            let reps: Vec<Representation> = t
                .iter()
                .map(|&i| catalog.entries()[i].rep.clone())
                .collect();
            let dims = ce(cluster_tilted_dims(q, &reps))?;
            if dims.end_c != dims.end_a + dims.j_dim {
                return Err(format!("dimension identity failed on {t:?}"));
            }
            if (dims.j_dim == 0) != ce(is_slice(q, &reps))? {
                return Err(format!("slice criterion failed on {t:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} tilting modules"))
}

fn check_square_presentation() -> Check {
    let q = Quiver::square_tilde_a22();
    let s = ce(q.vertex_index("s"))?;
    let t = ce(q.vertex_index("t"))?;
    let p = ce(AlgebraPresentation::new(q.clone(), vec![(s, t, 2)]))?;
    let (raw, report) = cluster_tilted_quiver(&p);
    if raw.arrows.len() != q.arrows().len() + 2 || !report.passed() {
        return Err("square relations did not close into 2 clean arrows".into());
    }
    Ok("2 arrows added, no loops, no 2-cycles".into())
}

fn check_exchange_graph_regular() -> Check {
    let mut details = Vec::new();
    for catalog in dynkin_catalogs()? {
        let n = catalog.quiver().n();
        let complex = ce(build_complex(&catalog, true))?;
        let graph = ce(exchange_graph(&complex))?;
        if !graph.degrees().iter().all(|&d| d == n) {
            return Err(format!("exchange graph is not {n}-regular"));
        }
        if !graph.is_connected() {
            return Err("exchange graph is disconnected".into());
        }
        details.push(format!("{}/{}", graph.node_count, graph.edges.len()));
    }
    Ok(format!("nodes/edges: {}", details.join(", ")))
}

// ------------------------------------------------------------------
// cluster algebra
// ------------------------------------------------------------------

fn check_laurent_depth_eight() -> Check {
    let mut steps = 0usize;
    for q in [Quiver::linear(3), Quiver::d4(), Quiver::kronecker()] {
        let n = q.n();
        for start in 0..n {
            let mut seed = initial_seed(&q);
            for step in 0..8usize {
                seed = ce(mutate(&seed, (start + step) % n))?;
                steps += 1;
            }
        }
    }
    Ok(format!("{steps} exact exchange divisions"))
}

fn check_variable_positivity() -> Check {
    let zero = tiltlab_core::Int::from(0);
    let mut checked = 0usize;
    for (q, _) in dynkin_bench() {
        let enumeration = ce(enumerate_clusters(&q, 32))?;
        if !enumeration.complete {
            return Err("Dynkin enumeration hit the depth cap".into());
        }
        for v in &enumeration.variables {
            if !v.terms().values().all(|c| *c > zero) {
                return Err("a cluster variable has a non-positive coefficient".into());
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} variables, all coefficients positive"))
}

fn check_mutation_involution() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut states = 0usize;
    while states < 100 {
        for q in bench_quivers() {
            let n = q.n();
            let mut seed: Seed = initial_seed(&q);
            for _ in 0..rng.gen_range(0usize..5) {
                seed = ce(mutate(&seed, rng.gen_range(0..n)))?;
            }
            let k = rng.gen_range(0..n);
            let back = ce(mutate(&ce(mutate(&seed, k))?, k))?;
            if back != seed {
                return Err(format!("mutation at {k} is not involutive"));
            }
            for i in 0..n {
                for j in 0..n {
                    if seed.matrix()[i][j] != -seed.matrix()[j][i] {
                        return Err("exchange matrix lost skew-symmetry".into());
                    }
                }
            }
            states += 1;
        }
    }
    Ok(format!("{states} random mutation states"))
}

fn check_denominator_bijection() -> Check {
    let mut details = Vec::new();
    for catalog in dynkin_catalogs()? {
        let report = ce(correspondence_check(&catalog))?;
        if !report.passed() {
            return Err(format!(
                "correspondence failed: bijection {}, simplices {}, fan {}",
                report.bijection_holds,
                report.clusters_match_simplices,
                report.fan_inequalities_hold
            ));
        }
        details.push(format!(
            "{} vars/{} clusters",
            report.variable_count, report.cluster_count
        ));
    }
    Ok(details.join(", "))
}

/// Runs every check and returns one line per property.
pub fn run_all() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    add(&mut lines, "quiver/form-bilinearity", check_form_bilinearity());
    add(&mut lines, "quiver/root-counts", check_root_counts());
    add(&mut lines, "quiver/coxeter-inverse", check_coxeter_inverse());
    add(
        &mut lines,
        "quiver/reflection-preserves-form",
        check_reflection_preserves_tits(),
    );
    add(
        &mut lines,
        "quiver/reflection-reindexing",
        check_reflection_reindexing(),
    );
    add(&mut lines, "rep/euler-identity", check_euler_identity());
    add(&mut lines, "rep/translate-formula", check_translate_formula());
    add(
        &mut lines,
        "rep/translate-round-trip",
        check_translate_round_trip(),
    );
    add(
        &mut lines,
        "rep/reflection-preserves-exceptional",
        check_bgp_preserves_exceptional(),
    );
    add(
        &mut lines,
        "rep/semi-invariant-vanishing",
        check_semi_invariant_vanishing(),
    );
    add(
        &mut lines,
        "tilting/size-and-independence",
        check_tilting_size_and_independence(),
    );
    add(&mut lines, "tilting/complement-counts", check_complement_counts());
    add(
        &mut lines,
        "tilting/complement-exchange-direction",
        check_complement_exchange_direction(),
    );
    add(
        &mut lines,
        "tilting/torsion-classification",
        check_torsion_classification(),
    );
    add(&mut lines, "tilting/schofield-counts", check_schofield_counts());
    add(&mut lines, "tilting/volume-identities", check_volume_identities());
    add(&mut lines, "tilting/weighted-series", check_weighted_series());
    add(
        &mut lines,
        "complex/plain-inside-extended",
        check_plain_inside_extended(),
    );
    add(&mut lines, "complex/sphere-counts", check_sphere_counts());
    add(
        &mut lines,
        "complex/negatives-share-simplex",
        check_negatives_share_a_simplex(),
    );
    add(&mut lines, "complex/fan-property", check_fan_property());
    add(
        &mut lines,
        "complex/boundary-non-sincere",
        check_boundary_is_non_sincere(),
    );
    add(
        &mut lines,
        "cluster-category/pairing-symmetry",
        check_pairing_symmetry(),
    );
    add(
        &mut lines,
        "cluster-category/compatibility-complex",
        check_compatibility_equals_complex(),
    );
    add(
        &mut lines,
        "cluster-category/two-complements",
        check_two_complements_in_cluster_category(),
    );
    add(
        &mut lines,
        "cluster-category/dimension-identity",
        check_cta_dimension_identity(),
    );
    add(
        &mut lines,
        "cluster-category/square-presentation",
        check_square_presentation(),
    );
    add(
        &mut lines,
        "cluster-category/exchange-regularity",
        check_exchange_graph_regular(),
    );
    add(&mut lines, "cluster-algebra/laurent-depth-8", check_laurent_depth_eight());
    add(
        &mut lines,
        "cluster-algebra/coefficient-positivity",
        check_variable_positivity(),
    );
    add(
        &mut lines,
        "cluster-algebra/mutation-involution",
        check_mutation_involution(),
    );
    add(
        &mut lines,
        "cluster-algebra/denominator-bijection",
        check_denominator_bijection(),
    );
    lines
}
